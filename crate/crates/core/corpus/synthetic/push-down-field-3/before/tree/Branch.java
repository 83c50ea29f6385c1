package tree;

public class Branch extends Node {
    public void attach(Node child) {
        children.add(child);
        child.parent = this;
    }

    public int degree() {
        return children.size();
    }
}
