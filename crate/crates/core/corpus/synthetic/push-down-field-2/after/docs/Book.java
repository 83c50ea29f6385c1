package docs;

public class Book extends Document {
    protected int pageCount;

    public Book(String title, int pages) {
        this.title = title;
        this.pageCount = pages;
    }

    public boolean isLong() {
        return pageCount > 400;
    }
}
