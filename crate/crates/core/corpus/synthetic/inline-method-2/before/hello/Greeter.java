package hello;

public class Greeter {
    private final String greeting;

    public Greeter(String greeting) {
        this.greeting = greeting;
    }

    public String greet(String name) {
        return decorate(greeting + ", " + name);
    }

    private String decorate(String text) {
        return "*** " + text.toUpperCase() + " ***";
    }
}
