package school;

public class Student {
    private final String name;
    private final Transcript transcript = new Transcript();

    public Student(String name) {
        this.name = name;
    }

    public void updateGpa(double value) {
        transcript.gpa = value;
    }

    public boolean honors() {
        return transcript.gpa >= 3.5;
    }
}
