package web;

public abstract class Handler {
    protected int requestCount;

    public abstract String handle(String path);
}
