package sales;

import java.util.List;

public class Order {
    private final List<Item> items;

    public Order(List<Item> items) {
        this.items = items;
    }

    public List<Item> getItems() {
        return items;
    }

    public double taxFor(double subtotal, String region) {
        double rate = region.equals("EU") ? 0.21 : 0.07;
        double tax = subtotal * rate;
        return Math.round(tax * 100.0) / 100.0;
    }
}
