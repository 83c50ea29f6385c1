package stats;

public class Summary {
    public String describe(double[] values) {
        double sum = 0;
        for (double v : values) {
            sum += v;
        }
        double mean = sum / values.length;
        return "n=" + values.length + " mean=" + mean;
    }
}
