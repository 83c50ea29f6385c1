package geom;

public abstract class Shape {
    public abstract double area();
}
