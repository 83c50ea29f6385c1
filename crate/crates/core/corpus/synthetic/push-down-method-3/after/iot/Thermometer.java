package iot;

public class Thermometer extends Sensor {
    @Override
    public String unit() {
        return "C";
    }

    public void record(double celsius) {
        lastReading = celsius;
    }

    public double toFahrenheit() {
        double c = lastReading;
        return c * 9.0 / 5.0 + 32.0;
    }
}
