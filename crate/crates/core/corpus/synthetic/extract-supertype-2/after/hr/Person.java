package hr;

public abstract class Person {
    protected String name;

    public String getName() {
        return name;
    }
}
