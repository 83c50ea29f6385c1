package ui;

import java.util.ArrayList;
import java.util.List;

public class Button {
    private final List<ClickListener> listeners = new ArrayList<>();

    public void register(ClickListener listener) {
        listeners.add(listener);
    }

    public void press(int x, int y) {
        for (ClickListener l : listeners) {
            l.onClick(x, y);
        }
    }
}
