package zoo;

public abstract class Animal {
    protected final String name;

    protected Animal(String name) {
        this.name = name;
    }

    public abstract String sound();

    public String describe() {
        StringBuilder sb = new StringBuilder();
        sb.append(name).append(" says ").append(sound());
        return sb.toString();
    }
}
