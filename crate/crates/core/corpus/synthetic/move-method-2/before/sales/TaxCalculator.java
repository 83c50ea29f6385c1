package sales;

public class TaxCalculator {
    public double subtotal(Order order) {
        double sum = 0;
        for (Item item : order.getItems()) {
            sum += item.price();
        }
        return sum;
    }
}
