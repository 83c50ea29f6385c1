package fleet;

public class Truck extends Vehicle {
    protected int mileage;

    public int wheels() {
        return 6;
    }

    public void drive(int km) {
        mileage += km;
    }

    public boolean needsService() {
        return mileage > 20000;
    }
}
