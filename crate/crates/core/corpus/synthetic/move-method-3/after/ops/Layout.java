package ops;

public class Layout {
    static String bracket(String s) {
        return "[" + s + "]";
    }

    static String padLevel(String level) {
        StringBuilder padded = new StringBuilder(level);
        while (padded.length() < 5) {
            padded.append(' ');
        }
        return padded.toString();
    }
}
