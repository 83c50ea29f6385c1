package tree;

public class Branch extends Node {
    protected java.util.List<Node> children = new java.util.ArrayList<>();

    public void attach(Node child) {
        children.add(child);
        child.parent = this;
    }

    public int degree() {
        return children.size();
    }
}
