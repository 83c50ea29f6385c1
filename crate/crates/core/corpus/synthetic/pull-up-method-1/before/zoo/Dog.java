package zoo;

public class Dog extends Animal {
    public Dog(String name) {
        super(name);
    }

    @Override
    public String sound() {
        return "woof";
    }

    public String describe() {
        StringBuilder sb = new StringBuilder();
        sb.append(name).append(" says ").append(sound());
        return sb.toString();
    }
}
