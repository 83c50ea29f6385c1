package reports;

import java.util.List;

public abstract class Report {
    protected abstract List<String> rows();

    public String render() {
        return String.join("\n", rows());
    }
}
