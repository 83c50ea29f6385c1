package hello;

public class Greeter {
    private final String greeting;

    public Greeter(String greeting) {
        this.greeting = greeting;
    }

    public String greet(String name) {
        String text = greeting + ", " + name;
        return "*** " + text.toUpperCase() + " ***";
    }
}
