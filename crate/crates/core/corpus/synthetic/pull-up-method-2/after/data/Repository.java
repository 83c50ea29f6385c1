package data;

import java.util.HashMap;
import java.util.Map;

public abstract class Repository<T> {
    protected final Map<Long, T> store = new HashMap<>();

    public T find(long id) {
        return store.get(id);
    }

    public boolean delete(long id) {
        if (!store.containsKey(id)) {
            return false;
        }
        store.remove(id);
        return true;
    }
}
