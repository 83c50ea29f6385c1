package stats;

public class Summary {
    public String describe(double[] values) {
        double mean = mean(values);
        return "n=" + values.length + " mean=" + mean;
    }

    double mean(double[] values) {
        double sum = 0;
        for (double v : values) {
            sum += v;
        }
        return sum / values.length;
    }
}
