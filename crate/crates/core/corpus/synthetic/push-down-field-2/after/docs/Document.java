package docs;

public abstract class Document {
    protected String title;

    public String getTitle() {
        return title;
    }
}
