package fleet;

public abstract class Vehicle {
    public abstract int wheels();
}
