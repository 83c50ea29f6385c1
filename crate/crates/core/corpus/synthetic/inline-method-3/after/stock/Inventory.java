package stock;

import java.util.HashMap;
import java.util.Map;

public class Inventory {
    private final Map<String, Integer> counts = new HashMap<>();

    public void receive(String sku, int qty) {
        counts.merge(sku, qty, Integer::sum);
    }

    public boolean ship(String sku, int qty) {
        Integer have = counts.get(sku);
        if (have == null || have < qty) {
            return false;
        }
        counts.put(sku, have - qty);
        return true;
    }
}
