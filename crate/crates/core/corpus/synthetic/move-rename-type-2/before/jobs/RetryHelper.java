package jobs;

import java.util.concurrent.Callable;

public class RetryHelper {
    private final int maxAttempts;
    private final long backoffMillis;

    public RetryHelper(int maxAttempts, long backoffMillis) {
        this.maxAttempts = maxAttempts;
        this.backoffMillis = backoffMillis;
    }

    public <T> T call(Callable<T> task) throws Exception {
        Exception last = null;
        for (int attempt = 1; attempt <= maxAttempts; attempt++) {
            try {
                return task.call();
            } catch (Exception e) {
                last = e;
                Thread.sleep(backoffMillis * attempt);
            }
        }
        throw last;
    }

    public int getMaxAttempts() {
        return maxAttempts;
    }
}
