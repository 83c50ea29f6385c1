package web;

public class StaticHandler extends Handler {
    protected int requestCount;
    private final String root;

    public StaticHandler(String root) {
        this.root = root;
    }

    public String handle(String path) {
        this.requestCount++;
        return root + path;
    }

    public int served() {
        return requestCount;
    }
}
