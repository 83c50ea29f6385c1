package srv;

public class Server {
    private int port = 8080;
    private boolean running;

    public void start() {
        running = true;
        System.out.println("listening on " + port);
    }

    public int getPort() {
        return port;
    }
}
