package shop;

import java.util.ArrayList;
import java.util.List;

public class Cart {
    private final List<Double> prices = new ArrayList<>();

    public void add(double price) {
        prices.add(price);
    }

    public double calc() {
        double sum = 0;
        for (double p : prices) {
            sum += p;
        }
        return sum;
    }

    public boolean isExpensive() {
        return calc() > 100;
    }
}
