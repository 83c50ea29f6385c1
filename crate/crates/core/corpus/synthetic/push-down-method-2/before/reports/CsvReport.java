package reports;

import java.util.Arrays;
import java.util.List;

public class CsvReport extends Report {
    @Override
    protected List<String> rows() {
        return Arrays.asList(renderCsvHeader(Arrays.asList("id", "name")), "1,alice");
    }
}
