package tree;

public abstract class Node {
    protected Node parent;

    public Node getParent() {
        return parent;
    }
}
