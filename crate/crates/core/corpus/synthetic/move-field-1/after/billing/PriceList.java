package billing;

public class PriceList {
    private final TaxSettings settings = new TaxSettings();

    public double gross(double net) {
        return net * (1 + settings.vatRate);
    }

    public void setVatRate(double rate) {
        settings.vatRate = rate;
    }
}
