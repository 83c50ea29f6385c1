package forms;

import java.util.regex.Pattern;

public class EmailField {
    private static final Pattern EMAIL = Pattern.compile("^[^@\\s]+@[^@\\s]+\\.[a-z]{2,}$");
    private String value = "";

    public void set(String v) {
        value = v == null ? "" : v.trim();
    }

    public boolean chk() {
        if (value.isEmpty()) {
            return false;
        }
        return EMAIL.matcher(value).matches();
    }
}
