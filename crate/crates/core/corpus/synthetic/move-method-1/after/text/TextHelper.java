package text;

public class TextHelper {
    public static String reverse(String s) {
        return new StringBuilder(s).reverse().toString();
    }
}
