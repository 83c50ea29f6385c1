package conf;

import java.util.HashMap;
import java.util.Map;

public class IniParser implements ConfigParser {
    public Map<String, String> parse(String text) {
        Map<String, String> values = new HashMap<>();
        for (String line : text.split("\n")) {
            int eq = line.indexOf('=');
            if (eq > 0) {
                values.put(line.substring(0, eq).trim(), line.substring(eq + 1).trim());
            }
        }
        return values;
    }

    public boolean supports(String fileName) {
        return fileName.endsWith(".ini");
    }

    public String name() {
        return "ini";
    }
}
