package gfx;

public interface Widget {
    int width();

    int height();

    default int area() {
        int w = width();
        int h = height();
        return w * h;
    }
}
