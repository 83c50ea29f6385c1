package fleet;

public abstract class Vehicle {
    protected int mileage;

    public abstract int wheels();
}
