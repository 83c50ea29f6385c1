package srv;

public class Server {
    private final ServerConfig config = new ServerConfig();
    private boolean running;

    public void start() {
        running = true;
        System.out.println("listening on " + config.port);
    }

    public int getPort() {
        return config.port;
    }
}
