package geom;

public class Circle extends Shape {
    private final double r;

    public Circle(double r) {
        this.r = r;
    }

    @Override
    public double area() {
        return radiusSquared(r);
    }

    public double radiusSquared(double r) {
        double sq = r * r;
        return Math.PI * sq;
    }
}
