package school;

public class Transcript {
    int credits;

    void addCredits(int c) {
        credits += c;
    }
}
