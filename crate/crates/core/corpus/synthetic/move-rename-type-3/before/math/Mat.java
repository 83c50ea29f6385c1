package math;

public class Mat {
    private final double[][] cells;

    public Mat(int rows, int cols) {
        cells = new double[rows][cols];
    }

    public void set(int r, int c, double v) {
        cells[r][c] = v;
    }

    public double get(int r, int c) {
        return cells[r][c];
    }

    public Mat multiply(Mat other) {
        int n = cells.length;
        int m = other.cells[0].length;
        Mat result = new Mat(n, m);
        for (int i = 0; i < n; i++) {
            for (int k = 0; k < other.cells.length; k++) {
                for (int jj = 0; jj < m; jj++) {
                    result.cells[i][jj] += cells[i][k] * other.cells[k][jj];
                }
            }
        }
        return result;
    }
}
