package billing;

public class TaxSettings {
    String region = "EU";

    boolean domestic() {
        return region.equals("EU");
    }
}
