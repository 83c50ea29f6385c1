package cache;

import java.util.LinkedHashMap;
import java.util.Map;

public class LruCache<K, V> {
    private final int capacity;
    private final LinkedHashMap<K, V> map = new LinkedHashMap<>(16, 0.75f, true);

    public LruCache(int capacity) {
        this.capacity = capacity;
    }

    public V get(K key) {
        return map.get(key);
    }

    public void put(K key, V value) {
        map.put(key, value);
        evictEldestEntries();
    }

    private void evictEldestEntries() {
        while (map.size() > capacity) {
            K eldest = map.keySet().iterator().next();
            map.remove(eldest);
        }
    }
}
