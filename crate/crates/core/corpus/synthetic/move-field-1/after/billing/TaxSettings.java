package billing;

public class TaxSettings {
    String region = "EU";
    double vatRate = 0.2;

    boolean domestic() {
        return region.equals("EU");
    }
}
