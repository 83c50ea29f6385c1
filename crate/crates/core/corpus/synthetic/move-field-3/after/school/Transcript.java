package school;

public class Transcript {
    int credits;
    double gpa;

    void addCredits(int c) {
        credits += c;
    }
}
