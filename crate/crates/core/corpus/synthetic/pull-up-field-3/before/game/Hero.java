package game;

public class Hero extends Entity {
    protected int health = 100;

    public void hit(int damage) {
        health = Math.max(0, health - damage);
    }

    public boolean alive() {
        return health > 0;
    }
}
