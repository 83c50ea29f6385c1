package ui;

import java.util.ArrayList;
import java.util.List;

public class Button {
    private final List<Listener> listeners = new ArrayList<>();

    public void register(Listener listener) {
        listeners.add(listener);
    }

    public void press(int x, int y) {
        for (Listener l : listeners) {
            l.onClick(x, y);
        }
    }
}
