package web;

public abstract class Handler {
    public abstract String handle(String path);
}
