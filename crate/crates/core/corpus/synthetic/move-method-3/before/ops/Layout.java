package ops;

public class Layout {
    static String bracket(String s) {
        return "[" + s + "]";
    }
}
