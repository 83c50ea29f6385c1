package srv;

public class ServerConfig {
    String host = "localhost";

    String address() {
        return host;
    }
}
