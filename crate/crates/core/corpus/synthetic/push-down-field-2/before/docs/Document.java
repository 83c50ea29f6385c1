package docs;

public abstract class Document {
    protected String title;
    protected int pageCount;

    public String getTitle() {
        return title;
    }
}
