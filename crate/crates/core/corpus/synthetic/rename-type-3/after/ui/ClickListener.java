package ui;

public interface ClickListener {
    void onClick(int x, int y);

    void onDoubleClick(int x, int y);

    default boolean accepts(int button) {
        return button == 1 || button == 3;
    }
}
