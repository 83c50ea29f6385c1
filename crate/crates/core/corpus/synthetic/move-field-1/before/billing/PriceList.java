package billing;

public class PriceList {
    private double vatRate = 0.2;

    public double gross(double net) {
        return net * (1 + vatRate);
    }

    public void setVatRate(double rate) {
        vatRate = rate;
    }
}
