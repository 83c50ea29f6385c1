package ops;

import java.time.Instant;

public class Logger {
    private final String component;

    public Logger(String component) {
        this.component = component;
    }

    public void info(String message) {
        System.out.println(format("INFO", message));
    }

    String format(String level, String message) {
        return Instant.now() + " [" + level + "] " + component + ": " + message;
    }
}
