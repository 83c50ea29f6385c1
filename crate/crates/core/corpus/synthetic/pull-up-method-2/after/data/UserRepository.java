package data;

public class UserRepository extends Repository<String> {
    public void save(long id, String user) {
        store.put(id, user);
    }
}
