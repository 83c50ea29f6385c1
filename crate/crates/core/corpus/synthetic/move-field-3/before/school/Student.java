package school;

public class Student {
    private final String name;
    private double gpa;

    public Student(String name) {
        this.name = name;
    }

    public void updateGpa(double value) {
        gpa = value;
    }

    public boolean honors() {
        return gpa >= 3.5;
    }
}
