package tree;

public abstract class Node {
    protected Node parent;
    protected java.util.List<Node> children = new java.util.ArrayList<>();

    public Node getParent() {
        return parent;
    }
}
