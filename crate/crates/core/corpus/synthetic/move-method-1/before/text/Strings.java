package text;

public final class Strings {
    public static boolean isBlank(String s) {
        return s == null || s.trim().isEmpty();
    }
}
