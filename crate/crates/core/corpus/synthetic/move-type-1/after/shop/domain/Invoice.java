package shop.domain;

import java.util.ArrayList;
import java.util.List;

public class Invoice {
    private final String customer;
    private final List<Double> lines = new ArrayList<>();
    private double discount;

    public Invoice(String customer) {
        this.customer = customer;
    }

    public void addLine(double amount) {
        if (amount <= 0) {
            throw new IllegalArgumentException("amount must be positive");
        }
        lines.add(amount);
    }

    public void applyDiscount(double percent) {
        discount = percent / 100.0;
    }

    public double total() {
        double sum = 0;
        for (double line : lines) {
            sum += line;
        }
        return sum * (1 - discount);
    }

    public String getCustomer() {
        return customer;
    }
}
