package reports;

import java.util.Arrays;
import java.util.List;

public class CsvReport extends Report {
    @Override
    protected List<String> rows() {
        return Arrays.asList(renderCsvHeader(Arrays.asList("id", "name")), "1,alice");
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
