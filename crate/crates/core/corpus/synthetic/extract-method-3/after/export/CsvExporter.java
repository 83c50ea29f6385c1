package export;

import java.io.IOException;
import java.io.Writer;
import java.util.List;

public class CsvExporter {
    public void export(List<String[]> rows, Writer out) throws IOException {
        for (String[] row : rows) {
            out.write(formatRow(row));
            out.write("\n");
        }
        out.flush();
    }

    String formatRow(String[] row) {
        StringBuilder line = new StringBuilder();
        for (int i = 0; i < row.length; i++) {
            if (i > 0) {
                line.append(',');
            }
            line.append('"').append(row[i].replace("\"", "\"\"")).append('"');
        }
        return line.toString();
    }
}
