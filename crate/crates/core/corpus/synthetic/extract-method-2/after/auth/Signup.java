package auth;

import java.util.HashSet;
import java.util.Set;

public class Signup {
    private final Set<String> users = new HashSet<>();

    public boolean register(String user, String password) {
        if (!strong(password)) {
            return false;
        }
        return users.add(user);
    }

    private boolean strong(String password) {
        if (password.length() < 8) {
            return false;
        }
        boolean digit = false;
        for (char c : password.toCharArray()) {
            if (Character.isDigit(c)) {
                digit = true;
            }
        }
        return digit;
    }
}
