package gfx;

public interface Widget {
    int width();

    int height();
}
