package conc.queue;

public class BoundedQueue<T> {
    private final Object[] items;
    private int head;
    private int size;

    public BoundedQueue(int capacity) {
        items = new Object[capacity];
    }

    public boolean offer(T item) {
        if (size == items.length) {
            return false;
        }
        items[(head + size) % items.length] = item;
        size++;
        return true;
    }

    @SuppressWarnings("unchecked")
    public T poll() {
        if (size == 0) {
            return null;
        }
        T item = (T) items[head];
        items[head] = null;
        head = (head + 1) % items.length;
        size--;
        return item;
    }

    public int size() {
        return size;
    }

    static class Stats {
        int offered;
        int rejected;

        double rejectionRate() {
            return offered == 0 ? 0.0 : (double) rejected / offered;
        }
    }
}
