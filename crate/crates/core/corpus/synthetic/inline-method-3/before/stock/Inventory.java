package stock;

import java.util.HashMap;
import java.util.Map;

public class Inventory {
    private final Map<String, Integer> counts = new HashMap<>();

    public void receive(String sku, int qty) {
        counts.merge(sku, qty, Integer::sum);
    }

    public boolean ship(String sku, int qty) {
        if (!available(sku, qty)) {
            return false;
        }
        counts.put(sku, counts.get(sku) - qty);
        return true;
    }

    private boolean available(String sku, int qty) {
        Integer have = counts.get(sku);
        return have != null && have >= qty;
    }
}
