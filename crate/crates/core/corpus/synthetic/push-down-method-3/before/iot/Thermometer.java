package iot;

public class Thermometer extends Sensor {
    @Override
    public String unit() {
        return "C";
    }

    public void record(double celsius) {
        lastReading = celsius;
    }
}
