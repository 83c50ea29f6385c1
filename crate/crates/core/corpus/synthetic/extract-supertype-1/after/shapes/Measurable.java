package shapes;

public interface Measurable {
    double area();

    double perimeter();
}
