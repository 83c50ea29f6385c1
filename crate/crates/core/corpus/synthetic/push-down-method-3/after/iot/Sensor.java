package iot;

public abstract class Sensor {
    protected double lastReading;

    public abstract String unit();
}
