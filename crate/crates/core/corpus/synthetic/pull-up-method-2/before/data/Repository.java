package data;

import java.util.HashMap;
import java.util.Map;

public abstract class Repository<T> {
    protected final Map<Long, T> store = new HashMap<>();

    public T find(long id) {
        return store.get(id);
    }
}
