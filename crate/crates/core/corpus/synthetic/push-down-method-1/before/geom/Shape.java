package geom;

public abstract class Shape {
    public abstract double area();

    public double radiusSquared(double r) {
        double sq = r * r;
        return Math.PI * sq;
    }
}
