package iot;

public abstract class Sensor {
    protected double lastReading;

    public abstract String unit();

    public double toFahrenheit() {
        double c = lastReading;
        return c * 9.0 / 5.0 + 32.0;
    }
}
