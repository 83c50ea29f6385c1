package sales;

public class TaxCalculator {
    public double subtotal(Order order) {
        double sum = 0;
        for (Item item : order.getItems()) {
            sum += item.price();
        }
        return sum;
    }

    public double taxFor(double subtotal, String region) {
        double rate = region.equals("EU") ? 0.21 : 0.07;
        double tax = subtotal * rate;
        return Math.round(tax * 100.0) / 100.0;
    }
}
