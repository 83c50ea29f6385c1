package net;

import java.io.IOException;
import java.io.InputStream;
import java.io.OutputStream;
import java.net.Socket;

public class Connection implements AutoCloseable {
    private final Socket socket;
    private int retries;

    public Connection(Socket socket) {
        this.socket = socket;
    }

    public void send(byte[] payload) throws IOException {
        OutputStream out = socket.getOutputStream();
        out.write(payload);
        out.flush();
    }

    public int receive(byte[] buffer) throws IOException {
        InputStream in = socket.getInputStream();
        int read = in.read(buffer);
        if (read < 0) {
            retries++;
        }
        return read;
    }

    @Override
    public void close() throws IOException {
        socket.close();
    }
}
