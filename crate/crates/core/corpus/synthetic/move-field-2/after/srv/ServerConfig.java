package srv;

public class ServerConfig {
    String host = "localhost";
    int port = 8080;

    String address() {
        return host + ":" + port;
    }
}
