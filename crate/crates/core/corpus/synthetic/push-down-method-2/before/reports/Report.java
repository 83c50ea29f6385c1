package reports;

import java.util.List;

public abstract class Report {
    protected abstract List<String> rows();

    public String render() {
        return String.join("\n", rows());
    }

    public String renderCsvHeader(List<String> columns) {
        StringBuilder header = new StringBuilder();
        for (int i = 0; i < columns.size(); i++) {
            if (i > 0) {
                header.append(',');
            }
            header.append(columns.get(i).toUpperCase());
        }
        return header.toString();
    }
}
