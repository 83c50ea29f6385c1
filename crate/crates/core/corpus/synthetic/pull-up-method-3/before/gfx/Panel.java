package gfx;

public class Panel implements Widget {
    private final int w;
    private final int h;

    public Panel(int w, int h) {
        this.w = w;
        this.h = h;
    }

    public int width() {
        return w;
    }

    public int height() {
        return h;
    }

    public int area() {
        int w = width();
        int h = height();
        return w * h;
    }
}
