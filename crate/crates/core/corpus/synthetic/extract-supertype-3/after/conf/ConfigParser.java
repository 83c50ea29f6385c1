package conf;

import java.util.Map;

public interface ConfigParser {
    Map<String, String> parse(String text);

    boolean supports(String fileName);
}
