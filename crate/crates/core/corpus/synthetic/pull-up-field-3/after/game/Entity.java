package game;

public class Entity {
    protected float x;
    protected float y;
    protected int health;

    public void moveBy(float dx, float dy) {
        x += dx;
        y += dy;
    }
}
